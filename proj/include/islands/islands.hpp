#pragma once

#include "islands/admissibility.hpp"
#include "islands/analysis.hpp"
#include "islands/core.hpp"
#include "islands/domains.hpp"
#include "islands/engine.hpp"
#include "islands/eta.hpp"
#include "islands/oracle.hpp"
