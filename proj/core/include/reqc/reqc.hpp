#pragma once

#include "reqc/cat.hpp"
#include "reqc/crystal.hpp"
#include "reqc/fidelity.hpp"
#include "reqc/gates.hpp"
#include "reqc/hilbert.hpp"
#include "reqc/ionmodel.hpp"
#include "reqc/pulses.hpp"
#include "reqc/random.hpp"
#include "reqc/sweep.hpp"
