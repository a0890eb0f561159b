#pragma once

#include "central/core_grid.hpp"
#include "central/cweno.hpp"
#include "central/diffusion.hpp"
#include "central/errors.hpp"
#include "central/incompressible2d.hpp"
#include "central/models.hpp"
#include "central/semidiscrete.hpp"
#include "central/time_integration.hpp"
