#pragma once

// Umbrella header.

#include "aesthetics.hpp"
#include "bench.hpp"
#include "candidate.hpp"
#include "corpus.hpp"
#include "css.hpp"
#include "error.hpp"
#include "fitness.hpp"
#include "geometry.hpp"
#include "html.hpp"
#include "layout.hpp"
#include "localization.hpp"
#include "optimizer.hpp"
#include "page.hpp"
#include "patch.hpp"
#include "pdg.hpp"
#include "pso.hpp"
#include "segmentation.hpp"
#include "style.hpp"
#include "tabu.hpp"
