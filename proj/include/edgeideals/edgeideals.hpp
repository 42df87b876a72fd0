#pragma once

#include "edgeideals/betti.hpp"
#include "edgeideals/cellular.hpp"
#include "edgeideals/complex.hpp"
#include "edgeideals/families.hpp"
#include "edgeideals/field.hpp"
#include "edgeideals/fixtures.hpp"
#include "edgeideals/forest.hpp"
#include "edgeideals/graph.hpp"
#include "edgeideals/homology.hpp"
#include "edgeideals/io.hpp"
#include "edgeideals/matrix.hpp"
