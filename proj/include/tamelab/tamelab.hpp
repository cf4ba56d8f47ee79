#pragma once

#include "tamelab/analysis.hpp"
#include "tamelab/catalog.hpp"
#include "tamelab/cohomology.hpp"
#include "tamelab/cyclotomic.hpp"
#include "tamelab/error.hpp"
#include "tamelab/generate.hpp"
#include "tamelab/howell.hpp"
#include "tamelab/inertia.hpp"
#include "tamelab/int_matrix.hpp"
#include "tamelab/linalg.hpp"
#include "tamelab/mod_matrix.hpp"
#include "tamelab/neron.hpp"
#include "tamelab/polynomial.hpp"
#include "tamelab/random.hpp"
#include "tamelab/report.hpp"
#include "tamelab/smith.hpp"
#include "tamelab/suites.hpp"
#include "tamelab/torsion.hpp"
