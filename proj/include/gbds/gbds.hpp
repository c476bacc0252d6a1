#pragma once

#include "algebra.hpp"
#include "check.hpp"
#include "desingularize.hpp"
#include "error.hpp"
#include "gba.hpp"
#include "ideals.hpp"
#include "io.hpp"
#include "linalg.hpp"
#include "member.hpp"
#include "random.hpp"
#include "ring.hpp"
#include "semigroup.hpp"
#include "stone.hpp"
#include "system.hpp"
#include "tilde.hpp"
#include "word.hpp"
