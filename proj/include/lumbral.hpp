#ifndef LUMBRAL_HPP
#define LUMBRAL_HPP

#include "lumbral/errors.hpp"
#include "lumbral/rational.hpp"
#include "lumbral/poly.hpp"
#include "lumbral/series.hpp"
#include "lumbral/kernels.hpp"
#include "lumbral/triangle.hpp"
#include "lumbral/stirling_whitney.hpp"
#include "lumbral/partitions.hpp"
#include "lumbral/families.hpp"
#include "lumbral/umbral.hpp"
#include "lumbral/closed_forms.hpp"
#include "lumbral/verifier.hpp"

#endif  // LUMBRAL_HPP
