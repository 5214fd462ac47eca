#pragma once

#include "leibniz/algebra.hpp"
#include "leibniz/cartan.hpp"
#include "leibniz/conjugacy.hpp"
#include "leibniz/document.hpp"
#include "leibniz/error.hpp"
#include "leibniz/fixtures.hpp"
#include "leibniz/linalg.hpp"
#include "leibniz/matrix.hpp"
#include "leibniz/polynomial.hpp"
#include "leibniz/quotient.hpp"
#include "leibniz/random.hpp"
#include "leibniz/rational.hpp"
#include "leibniz/spectrum.hpp"
#include "leibniz/subspace.hpp"
