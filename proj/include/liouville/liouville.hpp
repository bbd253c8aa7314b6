#pragma once

#include "liouville/dirichlet.hpp"
#include "liouville/factor.hpp"
#include "liouville/lambda_gen.hpp"
#include "liouville/reference_tables.hpp"
#include "liouville/stats.hpp"
#include "liouville/summatory.hpp"
#include "liouville/towers.hpp"
#include "liouville/util.hpp"
#include "liouville/wave_svg.hpp"
