"""Tests for the claw-free spanning tree toolkit"""
