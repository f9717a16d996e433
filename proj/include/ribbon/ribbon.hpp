#pragma once

#include "ribbon/checked.hpp"
#include "ribbon/core.hpp"
#include "ribbon/errors.hpp"
#include "ribbon/geometry.hpp"
#include "ribbon/local/deformation.hpp"
#include "ribbon/local/hnf.hpp"
#include "ribbon/local/homology.hpp"
#include "ribbon/local/ideal.hpp"
#include "ribbon/local/linalg.hpp"
#include "ribbon/local/poly.hpp"
#include "ribbon/rational.hpp"
#include "ribbon/stability.hpp"
#include "ribbon/sweep.hpp"
