# Report history
