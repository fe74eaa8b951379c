#pragma once

#include "simconj/corpus.hpp"
#include "simconj/error.hpp"
#include "simconj/intertwiner.hpp"
#include "simconj/linalg.hpp"
#include "simconj/matrix.hpp"
#include "simconj/matrix_units.hpp"
#include "simconj/orthogonal.hpp"
#include "simconj/random.hpp"
#include "simconj/scalar.hpp"
#include "simconj/sylvester.hpp"
#include "simconj/tuple_io.hpp"
#include "simconj/words.hpp"
