#pragma once

// Umbrella header.
#include "fusionkit/perm.hpp"
#include "fusionkit/finite_group.hpp"
#include "fusionkit/group_algorithms.hpp"
#include "fusionkit/named_groups.hpp"
#include "fusionkit/lattice.hpp"
#include "fusionkit/fusion_system.hpp"
#include "fusionkit/classifier.hpp"
#include "fusionkit/alperin.hpp"
#include "fusionkit/constructions.hpp"
#include "fusionkit/examples.hpp"
#include "fusionkit/rv.hpp"
#include "fusionkit/io.hpp"
