#pragma once

// Umbrella header: the whole library in dependency order.

#include "exact.hpp"
#include "dilog.hpp"
#include "parabolic.hpp"
#include "words.hpp"
#include "diagram.hpp"
#include "coloring.hpp"
#include "volume.hpp"
#include "laurent.hpp"
#include "alexander.hpp"
#include "fixtures.hpp"
#include "json_io.hpp"
#include "report.hpp"
