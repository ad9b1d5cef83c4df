# Test Utilities Package
