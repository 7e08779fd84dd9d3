#pragma once

#include "sdn/error.hpp"
#include "sdn/image.hpp"
#include "sdn/kernel.hpp"
#include "sdn/model.hpp"
#include "sdn/shape_ops.hpp"
#include "sdn/skeleton.hpp"
#include "sdn/trainer.hpp"
