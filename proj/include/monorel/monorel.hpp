#pragma once

#include "monorel/words.hpp"
#include "monorel/presentation.hpp"
#include "monorel/rewrite.hpp"
#include "monorel/confluence.hpp"
#include "monorel/analysis.hpp"
#include "monorel/family.hpp"
#include "monorel/endo.hpp"
#include "monorel/io.hpp"
