#pragma once

#include "goeritz/coloring.hpp"
#include "goeritz/diagram.hpp"
#include "goeritz/errors.hpp"
#include "goeritz/goeritz_matrix.hpp"
#include "goeritz/intlattice.hpp"
#include "goeritz/realize.hpp"
#include "goeritz/shading.hpp"
