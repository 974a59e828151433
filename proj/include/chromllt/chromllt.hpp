#pragma once

#include "algebra.hpp"
#include "chromatic.hpp"
#include "dyckgraph.hpp"
#include "errors.hpp"
#include "io.hpp"
#include "lincomb.hpp"
#include "partitions.hpp"
#include "ratfunc.hpp"
#include "transforms.hpp"
#include "verify.hpp"
#include "words.hpp"
