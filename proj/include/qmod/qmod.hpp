#pragma once

#include "qmod/arith/binary_form.hpp"
#include "qmod/arith/error.hpp"
#include "qmod/arith/field.hpp"
#include "qmod/arith/forms.hpp"
#include "qmod/arith/matrix.hpp"
#include "qmod/arith/polynomial.hpp"
#include "qmod/arith/prime_field.hpp"
#include "qmod/arith/random.hpp"
#include "qmod/arith/rational.hpp"
#include "qmod/bn_invariants.hpp"
#include "qmod/pic_calculus.hpp"
#include "qmod/pic_json.hpp"
#include "qmod/quadric_json.hpp"
#include "qmod/quadric_lab.hpp"
#include "qmod/surface_lab.hpp"
