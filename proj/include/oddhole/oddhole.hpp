#pragma once

// Structural analysis of girth-constrained graphs: G_l membership with
// certificates, jumps over odd holes, K4-subdivision taxonomy, small cuts,
// criticality, exact coloring, and the lemma validation suite.

#include "oddhole/budget.hpp"
#include "oddhole/canonical.hpp"
#include "oddhole/checks.hpp"
#include "oddhole/coloring.hpp"
#include "oddhole/corpus.hpp"
#include "oddhole/cuts.hpp"
#include "oddhole/generators.hpp"
#include "oddhole/graph.hpp"
#include "oddhole/holes.hpp"
#include "oddhole/io.hpp"
#include "oddhole/jumps.hpp"
#include "oddhole/k4.hpp"
#include "oddhole/report.hpp"
#include "oddhole/status.hpp"
#include "oddhole/version.hpp"
#include "oddhole/vertex_set.hpp"
