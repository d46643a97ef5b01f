#pragma once

#include "sep3q/diagnostics.hpp"
#include "sep3q/io.hpp"
#include "sep3q/library.hpp"
#include "sep3q/mixed.hpp"
#include "sep3q/operators.hpp"
#include "sep3q/pure.hpp"
#include "sep3q/rng.hpp"
#include "sep3q/spectral.hpp"
#include "sep3q/states.hpp"
#include "sep3q/types.hpp"
