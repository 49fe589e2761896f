#pragma once

// Umbrella header.
#include "closed_form.hpp"
#include "combinatorics.hpp"
#include "determinant.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "lu.hpp"
#include "matrix.hpp"
#include "matrix_family.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "rational_function.hpp"
#include "verify.hpp"
