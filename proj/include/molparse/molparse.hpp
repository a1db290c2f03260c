//
// molparse - Copyright (c) 2026 the molparse authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include "molparse/canonical.hpp"
#include "molparse/chains.hpp"
#include "molparse/curation.hpp"
#include "molparse/dataset.hpp"
#include "molparse/elements.hpp"
#include "molparse/errors.hpp"
#include "molparse/eval.hpp"
#include "molparse/fragments.hpp"
#include "molparse/molecule.hpp"
#include "molparse/parse.hpp"
#include "molparse/pattern.hpp"
#include "molparse/random_molecule.hpp"
#include "molparse/rings.hpp"
#include "molparse/rng.hpp"
#include "molparse/tasks.hpp"
#include "molparse/tokenize.hpp"
#include "molparse/write.hpp"
