#pragma once

#include "action.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "groebner.hpp"
#include "invariants.hpp"
#include "matrix.hpp"
#include "monomial.hpp"
#include "multiplicative.hpp"
#include "parse.hpp"
#include "polynomial.hpp"
#include "reflections.hpp"
#include "scene.hpp"
#include "scene_io.hpp"
#include "separating.hpp"
#include "sepvariety.hpp"
