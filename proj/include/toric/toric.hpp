#pragma once

#include "toric/errors.hpp"
#include "toric/exact.hpp"
#include "toric/lp.hpp"
#include "toric/polyhedral.hpp"
#include "toric/graded_ring.hpp"
#include "toric/monomials.hpp"
#include "toric/fan.hpp"
#include "toric/chamber.hpp"
#include "toric/embedding.hpp"
#include "toric/incidence.hpp"
