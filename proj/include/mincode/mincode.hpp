#ifndef MINCODE_MINCODE_HPP
#define MINCODE_MINCODE_HPP

#include "mincode/blocking.hpp"
#include "mincode/codes.hpp"
#include "mincode/config.hpp"
#include "mincode/error.hpp"
#include "mincode/field.hpp"
#include "mincode/funcspec.hpp"
#include "mincode/geometry.hpp"
#include "mincode/io.hpp"
#include "mincode/linalg.hpp"
#include "mincode/repro.hpp"
#include "mincode/survey.hpp"

#endif  // MINCODE_MINCODE_HPP
