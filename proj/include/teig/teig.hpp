#pragma once

#include "teig/error.hpp"
#include "teig/core/monomial.hpp"
#include "teig/core/random.hpp"
#include "teig/core/tensor.hpp"
#include "teig/poly/unipoly.hpp"
#include "teig/poly/roots.hpp"
#include "teig/poly/matching.hpp"
#include "teig/linalg/dense.hpp"
#include "teig/resultant/macaulay.hpp"
#include "teig/resultant/pencil.hpp"
#include "teig/resultant/charpoly.hpp"
#include "teig/spectra/classify.hpp"
#include "teig/spectra/spectra.hpp"
#include "teig/dominance/paper_points.hpp"
#include "teig/dominance/jacobian.hpp"
#include "teig/dominance/certify.hpp"
#include "teig/inverse/levenberg_marquardt.hpp"
#include "teig/inverse/inverse.hpp"
