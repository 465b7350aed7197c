#pragma once

#include "bolext/table.hpp"
#include "bolext/group.hpp"
#include "bolext/theta.hpp"
#include "bolext/extension.hpp"
#include "bolext/identities.hpp"
#include "bolext/analysis.hpp"
#include "bolext/classifier.hpp"
