"""Command line scripts for the claw-free spanning tree toolkit"""
