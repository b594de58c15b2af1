#ifndef VBRAID_VBRAID_HPP
#define VBRAID_VBRAID_HPP

#include "vbraid/error.hpp"
#include "vbraid/freegroup.hpp"
#include "vbraid/gauss.hpp"
#include "vbraid/laurent.hpp"
#include "vbraid/lpmatrix.hpp"
#include "vbraid/monoidal.hpp"
#include "vbraid/perm.hpp"
#include "vbraid/presentation.hpp"
#include "vbraid/reps.hpp"
#include "vbraid/rewrite.hpp"
#include "vbraid/verify.hpp"
#include "vbraid/word.hpp"

#endif  // VBRAID_VBRAID_HPP
