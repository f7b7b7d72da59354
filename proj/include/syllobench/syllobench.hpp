#pragma once

// Umbrella header: the whole library.

#include "syllobench/analysis.hpp"
#include "syllobench/commands.hpp"
#include "syllobench/dataset.hpp"
#include "syllobench/domain.hpp"
#include "syllobench/errors.hpp"
#include "syllobench/harness.hpp"
#include "syllobench/io.hpp"
#include "syllobench/model.hpp"
#include "syllobench/models/baselines.hpp"
#include "syllobench/models/rules.hpp"
#include "syllobench/models/table.hpp"
#include "syllobench/recommenders.hpp"
#include "syllobench/registry.hpp"
#include "syllobench/rng.hpp"
#include "syllobench/synthetic.hpp"
