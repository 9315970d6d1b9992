#pragma once

// Umbrella header. JSON serialization lives in io.hpp and is opt-in because
// it drags in the vendored nlohmann single header.

#include "rational.hpp"
#include "linalg.hpp"
#include "sign_vector.hpp"
#include "fourier_motzkin.hpp"
#include "min_norm_point.hpp"
#include "feasibility.hpp"
#include "arrangement.hpp"
#include "cartan.hpp"
#include "root_system.hpp"
#include "coxeter_group.hpp"
#include "bruhat_order.hpp"
#include "weak_order.hpp"
#include "reflection_arrangement.hpp"
