#pragma once

#include "nilgeo/core.hpp"
#include "nilgeo/errors.hpp"
#include "nilgeo/geodesic.hpp"
#include "nilgeo/shooting.hpp"
#include "nilgeo/triangle.hpp"
