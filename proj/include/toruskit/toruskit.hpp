#pragma once

// Umbrella header for the torus-surgery workbench.

#include <toruskit/checked.hpp>
#include <toruskit/errors.hpp>
#include <toruskit/lattice.hpp>
#include <toruskit/manifest.hpp>
#include <toruskit/manifold.hpp>
#include <toruskit/pinwheel.hpp>
#include <toruskit/pipeline.hpp>
#include <toruskit/report.hpp>
#include <toruskit/seiberg_witten.hpp>
#include <toruskit/surgery.hpp>
#include <toruskit/sw_invariant.hpp>
