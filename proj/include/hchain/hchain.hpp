#pragma once

// Umbrella header.
#include "hchain/chain_model.hpp"
#include "hchain/chamber.hpp"
#include "hchain/errors.hpp"
#include "hchain/exact_linalg.hpp"
#include "hchain/git_chars.hpp"
#include "hchain/moduli.hpp"
#include "hchain/stability.hpp"
