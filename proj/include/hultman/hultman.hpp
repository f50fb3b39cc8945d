#pragma once

#include "hultman/arrangements.hpp"
#include "hultman/basic.hpp"
#include "hultman/bruhat.hpp"
#include "hultman/classify.hpp"
#include "hultman/coessential.hpp"
#include "hultman/element.hpp"
#include "hultman/group.hpp"
#include "hultman/hull.hpp"
#include "hultman/patterns.hpp"
#include "hultman/rank.hpp"
