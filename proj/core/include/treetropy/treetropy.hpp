#pragma once

#include "treetropy/collapse.hpp"
#include "treetropy/enumeration.hpp"
#include "treetropy/error.hpp"
#include "treetropy/explosion.hpp"
#include "treetropy/io.hpp"
#include "treetropy/path_entropy.hpp"
#include "treetropy/pattern.hpp"
#include "treetropy/star.hpp"
