#pragma once

#include "pmetric/distribution.hpp"
#include "pmetric/error.hpp"
#include "pmetric/levy.hpp"
#include "pmetric/lipschitz.hpp"
#include "pmetric/pmspace.hpp"
#include "pmetric/triangle.hpp"
