#pragma once

#include "laistry/errors.hpp"
#include "laistry/report.hpp"

#include "laistry/scalars/field.hpp"
#include "laistry/scalars/identities.hpp"
#include "laistry/scalars/matrix.hpp"
#include "laistry/scalars/multipoly.hpp"
#include "laistry/scalars/parse.hpp"
#include "laistry/scalars/poly.hpp"
#include "laistry/scalars/polysystem.hpp"

#include "laistry/pbw/confluence.hpp"
#include "laistry/pbw/engine.hpp"
#include "laistry/pbw/hilbert.hpp"
#include "laistry/pbw/identities.hpp"
#include "laistry/pbw/ncpoly.hpp"
#include "laistry/pbw/parse.hpp"
#include "laistry/pbw/word.hpp"

#include "laistry/maps/braiding.hpp"
#include "laistry/maps/ore.hpp"
#include "laistry/maps/quotient.hpp"

#include "laistry/repr/characters.hpp"
#include "laistry/repr/obstruction.hpp"
#include "laistry/repr/qp_modules.hpp"
#include "laistry/repr/rep.hpp"

#include "laistry/points/classify.hpp"
#include "laistry/points/sequence.hpp"
#include "laistry/points/system.hpp"
#include "laistry/points/verify.hpp"
#include "laistry/points/zeta.hpp"
