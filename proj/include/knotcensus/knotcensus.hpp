#pragma once

#include "errors.hpp"
#include "fraction.hpp"
#include "tangle.hpp"
#include "montesinos.hpp"
#include "mutation.hpp"
#include "volume.hpp"
#include "census.hpp"
