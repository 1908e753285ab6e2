#pragma once

#include "graphfiber/aomoto.hpp"
#include "graphfiber/arrangement.hpp"
#include "graphfiber/errors.hpp"
#include "graphfiber/fields.hpp"
#include "graphfiber/graph.hpp"
#include "graphfiber/io.hpp"
#include "graphfiber/linalg.hpp"
#include "graphfiber/milnor.hpp"
#include "graphfiber/resonance.hpp"
#include "graphfiber/verify.hpp"
