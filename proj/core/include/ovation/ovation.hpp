#pragma once

#include "ovation/audience.hpp"
#include "ovation/cascade.hpp"
#include "ovation/instance_io.hpp"
#include "ovation/oracle.hpp"
#include "ovation/solver.hpp"
