#pragma once

#include "k3count/bigint.hpp"
#include "k3count/counting.hpp"
#include "k3count/partitions.hpp"
#include "k3count/qseries.hpp"
#include "k3count/schain.hpp"
