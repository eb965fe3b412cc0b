# SPDX-License-Identifier: Apache-2.0.
# Copyright (c) 2024 - 2025 fracqos contributors.
"""Version information for fracqos."""

__version__ = "0.1.0"
