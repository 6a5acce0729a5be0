#pragma once

#include "hyperlab/error.hpp"
#include "hyperlab/bits.hpp"
#include "hyperlab/setcore.hpp"
#include "hyperlab/topology.hpp"
#include "hyperlab/hyperspace.hpp"
#include "hyperlab/mclosure.hpp"
#include "hyperlab/hypermaps.hpp"
#include "hyperlab/io.hpp"
#include "hyperlab/harness.hpp"
