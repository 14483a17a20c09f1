#pragma once

#include "foldext/admissible.hpp"
#include "foldext/construct.hpp"
#include "foldext/generator.hpp"
#include "foldext/genset.hpp"
#include "foldext/io.hpp"
#include "foldext/model.hpp"
#include "foldext/validate.hpp"
