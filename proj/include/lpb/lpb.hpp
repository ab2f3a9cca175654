// Umbrella header for the computational core.
#pragma once

#include "lpb/bundles.hpp"
#include "lpb/errors.hpp"
#include "lpb/exact.hpp"
#include "lpb/foliation.hpp"
#include "lpb/forms.hpp"
#include "lpb/grassmann.hpp"
#include "lpb/multipoly.hpp"
#include "lpb/polyring.hpp"
#include "lpb/symfunc.hpp"
