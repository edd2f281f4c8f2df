#pragma once

#include "torsion/counting.hpp"
#include "torsion/cyclicizer.hpp"
#include "torsion/errors.hpp"
#include "torsion/families.hpp"
#include "torsion/gap_script.hpp"
#include "torsion/group.hpp"
#include "torsion/lattice.hpp"
#include "torsion/numtheory.hpp"
#include "torsion/serialize.hpp"
#include "torsion/subgroup.hpp"
#include "torsion/verify.hpp"
