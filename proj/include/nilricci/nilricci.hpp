#pragma once
// Umbrella header: left-invariant Riemannian geometry of the nine
// five-dimensional nilpotent Lie algebras.

#include "core.hpp"
#include "linalg.hpp"
#include "derivations.hpp"
#include "ricci.hpp"
#include "frames.hpp"
#include "moduli.hpp"
#include "prescribed.hpp"
