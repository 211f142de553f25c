#pragma once

#include <missreg/types.hpp>
#include <missreg/data.hpp>
#include <missreg/surrogate.hpp>
#include <missreg/lasso.hpp>
#include <missreg/glasso.hpp>
#include <missreg/fista.hpp>
#include <missreg/estimator.hpp>
#include <missreg/tuning.hpp>
#include <missreg/simulate.hpp>
