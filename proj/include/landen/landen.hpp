#pragma once

/// Umbrella header for the rational Landen library.

#include "landen/coefficient.hpp"
#include "landen/errors.hpp"
#include "landen/io.hpp"
#include "landen/iteration.hpp"
#include "landen/linalg.hpp"
#include "landen/oracle.hpp"
#include "landen/polynomial.hpp"
#include "landen/scaling.hpp"
#include "landen/special.hpp"
#include "landen/sturm.hpp"
#include "landen/transform.hpp"
