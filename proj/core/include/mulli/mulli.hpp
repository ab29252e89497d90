#pragma once

#include "mulli/bg_symbol.hpp"
#include "mulli/enumeration.hpp"
#include "mulli/error.hpp"
#include "mulli/io.hpp"
#include "mulli/modulus.hpp"
#include "mulli/mullineux.hpp"
#include "mulli/partition.hpp"
#include "mulli/render.hpp"
#include "mulli/rim.hpp"
#include "mulli/symbol.hpp"
#include "mulli/verify.hpp"
