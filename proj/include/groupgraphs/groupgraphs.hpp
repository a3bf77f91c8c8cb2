#pragma once

// Umbrella header: pulls in the whole library.

#include "groupgraphs/bigint.hpp"
#include "groupgraphs/builders.hpp"
#include "groupgraphs/catalog.hpp"
#include "groupgraphs/checks.hpp"
#include "groupgraphs/fixtures.hpp"
#include "groupgraphs/formulas.hpp"
#include "groupgraphs/graph.hpp"
#include "groupgraphs/group.hpp"
#include "groupgraphs/invariants.hpp"
#include "groupgraphs/numtheory.hpp"
#include "groupgraphs/partitions.hpp"
#include "groupgraphs/perm.hpp"
#include "groupgraphs/report.hpp"
#include "groupgraphs/spec.hpp"
#include "groupgraphs/spectrum.hpp"
