#!/usr/bin/env python3
# coding: utf-8

# Autorship information
__author__ = "Herbrand Lab developers"
__copyright__ = "Copyright 2024, Herbrand Lab"
__credits__ = ["Herbrand Lab developers"]
__license__ = "GNU General Public License v2.0"
__version__ = "0.3.0"
__maintainer__ = "Herbrand Lab developers"
__status__ = "Production"
