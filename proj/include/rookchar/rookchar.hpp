#pragma once

#include "algebra.hpp"
#include "enumerate.hpp"
#include "linalg/dense.hpp"
#include "linalg/rational_matrix.hpp"
#include "partial_bijection.hpp"
#include "quasi_cycle.hpp"
#include "rational.hpp"
#include "report.hpp"
#include "states/gram.hpp"
#include "states/state.hpp"
#include "states/suites.hpp"
#include "tensor/closed_form.hpp"
#include "tensor/model_params.hpp"
#include "tensor/okounkov.hpp"
#include "tensor/product_model.hpp"
#include "tensor/spherical.hpp"
#include "words.hpp"
