#pragma once

#include "locdel/analysis.hpp"
#include "locdel/bits.hpp"
#include "locdel/channel.hpp"
#include "locdel/error.hpp"
#include "locdel/gc_multi.hpp"
#include "locdel/gc_single.hpp"
#include "locdel/gf2e.hpp"
#include "locdel/guess_check.hpp"
#include "locdel/mds.hpp"
#include "locdel/params.hpp"
#include "locdel/rng.hpp"
#include "locdel/simulator.hpp"
#include "locdel/subsequence.hpp"
