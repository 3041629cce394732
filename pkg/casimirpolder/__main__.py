# Copyright (C) 2024-2026 The python-casimirpolder developers
#
# This file is part of python-casimirpolder.
#
# It is subject to the license terms in the LICENSE file found in the top-level
# directory of this distribution.
#
# No part of python-casimirpolder, including this file, may be copied, modified,
# propagated, or distributed except according to the terms contained in the
# LICENSE file.

from __future__ import absolute_import, division, print_function, unicode_literals

import sys

from casimirpolder.cli import main

sys.exit(main())
