#pragma once

#include "qgeom/error.hpp"
#include "qgeom/numeric.hpp"
#include "qgeom/posgeom.hpp"
#include "qgeom/recoupling.hpp"
#include "qgeom/report.hpp"
#include "qgeom/spinnet.hpp"
#include "qgeom/statesum.hpp"
#include "qgeom/surgery.hpp"
#include "qgeom/triangulation.hpp"
