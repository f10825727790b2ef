#pragma once

#include "cosareas/areas.hpp"
#include "cosareas/bfile.hpp"
#include "cosareas/bigint.hpp"
#include "cosareas/breakpoint.hpp"
#include "cosareas/combinatorics.hpp"
#include "cosareas/egf.hpp"
#include "cosareas/identities.hpp"
#include "cosareas/piecewise.hpp"
#include "cosareas/rational.hpp"
#include "cosareas/trig.hpp"
