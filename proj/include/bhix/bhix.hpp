// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "bhix/bound_sweep.hpp"
#include "bhix/bounds.hpp"
#include "bhix/charpoly.hpp"
#include "bhix/error.hpp"
#include "bhix/extremal.hpp"
#include "bhix/families.hpp"
#include "bhix/graph.hpp"
#include "bhix/indices.hpp"
#include "bhix/io.hpp"
#include "bhix/operations.hpp"
#include "bhix/polynomial.hpp"
#include "bhix/spectra.hpp"
#include "bhix/sweep.hpp"
#include "bhix/trees.hpp"
