#pragma once

#include "loopsmith/core.hpp"
#include "loopsmith/subloop.hpp"
#include "loopsmith/identities.hpp"
#include "loopsmith/isotopy.hpp"
#include "loopsmith/morphisms.hpp"
#include "loopsmith/filter.hpp"
#include "loopsmith/generation.hpp"
#include "loopsmith/io.hpp"
#include "loopsmith/claims.hpp"
#include "loopsmith/report.hpp"
