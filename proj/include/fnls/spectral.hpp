#pragma once

#include "fnls/error.hpp"
#include "fnls/spectral/field.hpp"
#include "fnls/spectral/grid.hpp"
#include "fnls/spectral/littlewood_paley.hpp"
#include "fnls/spectral/multiplier.hpp"
#include "fnls/spectral/norms.hpp"
#include "fnls/spectral/padding.hpp"
#include "fnls/spectral/transform.hpp"
