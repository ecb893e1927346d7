#ifndef TWOHOOK_TWOHOOK_HPP_
#define TWOHOOK_TWOHOOK_HPP_

#include "twohook/construction.hpp"
#include "twohook/counting.hpp"
#include "twohook/errors.hpp"
#include "twohook/evalcheck.hpp"
#include "twohook/expansion.hpp"
#include "twohook/hookcore.hpp"
#include "twohook/justify.hpp"
#include "twohook/polynomial.hpp"

#endif  // TWOHOOK_TWOHOOK_HPP_
