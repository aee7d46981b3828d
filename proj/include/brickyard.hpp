#pragma once

#include "brickyard/arc.hpp"
#include "brickyard/d4.hpp"
#include "brickyard/field.hpp"
#include "brickyard/io.hpp"
#include "brickyard/permutation.hpp"
#include "brickyard/quiver.hpp"
#include "brickyard/reading.hpp"
#include "brickyard/render.hpp"
#include "brickyard/semibrick.hpp"
#include "brickyard/string_brick.hpp"
#include "brickyard/suites.hpp"
#include "brickyard/type_a.hpp"
#include "brickyard/universe.hpp"
