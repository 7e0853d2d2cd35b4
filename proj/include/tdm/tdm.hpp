#pragma once

#include "tdm/algebraic_series.hpp"
#include "tdm/asymptotics.hpp"
#include "tdm/bigfloat.hpp"
#include "tdm/coeffs.hpp"
#include "tdm/errors.hpp"
#include "tdm/finite_n.hpp"
#include "tdm/genfun.hpp"
#include "tdm/gf_seeds.hpp"
#include "tdm/integrality.hpp"
#include "tdm/io/document.hpp"
#include "tdm/io/golden.hpp"
#include "tdm/io/reproduce.hpp"
#include "tdm/mc/jacobi.hpp"
#include "tdm/mc/sampler.hpp"
#include "tdm/poly.hpp"
#include "tdm/rational.hpp"
#include "tdm/ratfunc.hpp"
#include "tdm/series.hpp"
#include "tdm/spectral_curve.hpp"
#include "tdm/symmetry.hpp"
