#pragma once

// Umbrella header: solenoidal vector wavelet analysis on the periodic cube.

#include "helwave/coherence.hpp"
#include "helwave/fourier.hpp"
#include "helwave/generators.hpp"
#include "helwave/helical.hpp"
#include "helwave/hodge.hpp"
#include "helwave/io.hpp"
#include "helwave/meyer.hpp"
#include "helwave/transform.hpp"
#include "helwave/types.hpp"
