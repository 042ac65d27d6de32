#pragma once

#include "analysis.hpp"
#include "charsums.hpp"
#include "codes.hpp"
#include "cyclotomic.hpp"
#include "field.hpp"
#include "io.hpp"
#include "polynomial.hpp"
