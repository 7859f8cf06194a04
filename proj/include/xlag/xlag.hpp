#pragma once

#include "xlag/error.hpp"
#include "xlag/exactmath/combinatorics.hpp"
#include "xlag/exactmath/poly.hpp"
#include "xlag/exactmath/rational.hpp"
#include "xlag/laguerre/laguerre.hpp"
#include "xlag/laguerre/quasipoly.hpp"
#include "xlag/laguerre/seeds.hpp"
#include "xlag/regularity/sturm.hpp"
#include "xlag/report/pipeline.hpp"
#include "xlag/report/report.hpp"
#include "xlag/spectral/eop.hpp"
#include "xlag/spectral/numeric_spectrum.hpp"
#include "xlag/spectral/orthogonality.hpp"
#include "xlag/spectral/potential.hpp"
#include "xlag/spectral/quadrature.hpp"
#include "xlag/spectral/wavefunction.hpp"
#include "xlag/verify/lattice.hpp"
#include "xlag/wronskian/compute_g.hpp"
#include "xlag/wronskian/extension_spec.hpp"
#include "xlag/wronskian/poly_matrix.hpp"
#include "xlag/wronskian/recurrence.hpp"
#include "xlag/wronskian/wronskian_direct.hpp"
