"""Test package for semantic-scholar-server""" 