#pragma once

#include "eulerforge/bigfloat.hpp"
#include "eulerforge/catalog.hpp"
#include "eulerforge/constants.hpp"
#include "eulerforge/descriptors.hpp"
#include "eulerforge/extraction.hpp"
#include "eulerforge/gamma_series.hpp"
#include "eulerforge/harmonic.hpp"
#include "eulerforge/rational.hpp"
#include "eulerforge/series.hpp"
#include "eulerforge/verifier.hpp"
