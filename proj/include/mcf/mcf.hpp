#pragma once

// Everything in one include.

#include "mcf/classify.hpp"
#include "mcf/contraction.hpp"
#include "mcf/core.hpp"
#include "mcf/engine.hpp"
#include "mcf/error.hpp"
#include "mcf/io/dot.hpp"
#include "mcf/io/instance.hpp"
#include "mcf/io/render.hpp"
#include "mcf/lab/enumerate.hpp"
#include "mcf/lab/extremal.hpp"
#include "mcf/lab/generators.hpp"
#include "mcf/lab/verify.hpp"
