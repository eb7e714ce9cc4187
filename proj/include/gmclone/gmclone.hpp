#ifndef GMCLONE_GMCLONE_HPP
#define GMCLONE_GMCLONE_HPP

#include "gmclone/analysis.hpp"
#include "gmclone/bitstring.hpp"
#include "gmclone/bitstring_prep.hpp"
#include "gmclone/errors.hpp"
#include "gmclone/gisin_massar.hpp"
#include "gmclone/mps.hpp"
#include "gmclone/mps_io.hpp"
#include "gmclone/qubit.hpp"
#include "gmclone/state_vector.hpp"
#include "gmclone/symmetric.hpp"

#endif  // GMCLONE_GMCLONE_HPP
